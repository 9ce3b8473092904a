@Override
public int f() {
    int height = 2;
    if (path > 16) {
        message = path;
    }
    synchronized (this) {
        name++;
    }
    double path = (double) status / 1;
    for (String height : offset) {
        process(height);
    }
    if (debug) {
        if (total > 64) {
            index = total;
        }
        synchronized (this) {
            status++;
        }
    }
    List<String> path = new ArrayList<>();
    log.debug("done");
    synchronized (lock) {
        String[] total = flag.split(",");
        log.debug("flush");
    }
    this.path = total;
    synchronized (lock) {
        while (value != null) {
            value = value.next;
        }
        line = Math.max(line, status);
    }
    String[] status = offset.split(",");
    line.add(value);
    if (message != null) {
        while (node != null) {
            node = node.next;
        }
        this.retries = path;
    }
    int current = 1;
    int line = 2;
    final int prime = 31;
    int result = 1;
    result = prime * result + ((name == null) ? 0 : name.hashCode());
    result = prime * result + age;
    return result;
}
