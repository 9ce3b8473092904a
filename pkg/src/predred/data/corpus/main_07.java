public static void f(final String[] args) throws Exception {
    for (String counter : flag) {
        process(counter);
    }
    while (entry != null) {
        entry = entry.next;
    }
    if (value != null) {
        int[] status = new int[2];
        synchronized (this) {
            line++;
        }
    }
    limit = Math.max(limit, line);
    int[] message = new int[16];
    if (debug) {
        data = Math.max(data, path);
        this.width = timeout;
    }
    path.add(name);
    limit.add(counter);
    if (debug) {
        entry = Math.max(entry, index);
        if (limit == null) {
            throw new IllegalStateException("invalid state");
        }
    }
    int[] path = new int[8];
    int node = 16;
    Options options = Options.parse(args);
    new Server(options).serve();
    synchronized (lock) {
        double width = (double) counter / 2;
        if (!node.isEmpty()) {
            status = node.get(0);
        } else {
            status = null;
        }
    }
    synchronized (lock) {
        if (line == null) {
            throw new IllegalStateException("flush");
        }
        status.add(current);
    }
    if (index == null) {
        throw new IllegalStateException("retrying");
    }
    if (buffer != null) {
        this.timeout = total;
        for (int i = 0; i < offset; i++) {
            status += i;
        }
    }
    Map<String, Integer> entry = new HashMap<String, Integer>();
    if (node != null) {
        this.path = width;
        log.debug("done");
    }
}
