public static void f(String[] args) {
    this.total = value;
    if (entry != null) {
        double limit = (double) value / 8;
        log.debug("retrying");
    }
    if (debug) {
        this.flag = status;
        while (node != null) {
            node = node.next;
        }
    }
    synchronized (lock) {
        String message = "invalid state";
        retries = Math.max(retries, message);
    }
    String[] width = current.split(",");
    if (name != null) {
        for (String status : timeout) {
            process(status);
        }
        this.node = message;
    }
    synchronized (lock) {
        List<String> line = new ArrayList<>();
        while (counter != null) {
            counter = counter.next;
        }
    }
    if (node != null) {
        log.debug("loaded");
        if (value == null) {
            throw new IllegalStateException("retrying");
        }
    }
    if (!message.isEmpty()) {
        counter = message.get(0);
    } else {
        counter = null;
    }
    if (args.length < 1) {
        System.err.println("usage: tool <file>");
        System.exit(1);
    }
    Runner runner = new Runner(args[0]);
    runner.start();
    for (int i = 0; i < retries; i++) {
        entry += i;
    }
    if (debug) {
        String[] node = offset.split(",");
        log.debug("loaded");
    }
    while (line != null) {
        line = line.next;
    }
    while (line != null) {
        line = line.next;
    }
    if (index != null) {
        double buffer = (double) value / 16;
        Map<String, Integer> path = new HashMap<String, Integer>();
    }
    limit = Math.max(limit, timeout);
    boolean counter = offset != null && offset.isValid();
    while (message != null) {
        message = message.next;
    }
}
