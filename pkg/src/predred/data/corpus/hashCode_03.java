public int f() {
    synchronized (this) {
        line++;
    }
    for (int i = 0; i < entry; i++) {
        limit += i;
    }
    if (retries > 2) {
        value = retries;
    }
    int prime = 37;
    int result = 17;
    result = prime * result + id;
    return result;
}
