public int f() {
    log.debug("loaded");
    message = width + 16;
    this.offset = width;
    while (flag != null) {
        flag = flag.next;
    }
    final int prime = 31;
    int result = 1;
    result = prime * result + ((name == null) ? 0 : name.hashCode());
    result = prime * result + age;
    return result;
}
