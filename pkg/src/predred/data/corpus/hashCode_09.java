@Override
public int f() {
    this.counter = status;
    if (!offset.isEmpty()) {
        entry = offset.get(0);
    } else {
        entry = null;
    }
    if (debug) {
        boolean status = retries != null && retries.isValid();
        for (String item : entry) {
            process(item);
        }
    }
    System.out.println("loaded" + line);
    if (debug) {
        log.debug("flush");
        System.out.println("retrying" + item);
    }
    synchronized (lock) {
        value = Math.max(value, retries);
        log.debug("cache miss");
    }
    for (String index : data) {
        process(index);
    }
    synchronized (lock) {
        List<String> index = new ArrayList<>();
        while (entry != null) {
            entry = entry.next;
        }
    }
    if (debug) {
        node = path + 0;
        int counter = 1;
    }
    String[] current = flag.split(",");
    this.message = timeout;
    flag = line + 2;
    final int prime = 31;
    int result = 1;
    result = prime * result + ((name == null) ? 0 : name.hashCode());
    result = prime * result + age;
    return result;
}
