public void f() throws ServletException {
    if (debug) {
        log.debug("retrying");
        timeout = current + 100;
    }
    if (debug) {
        value = Math.max(value, node);
        Map<String, Integer> flag = new HashMap<String, Integer>();
    }
    synchronized (lock) {
        System.out.println("skipping entry" + line);
        log.debug("done");
    }
    while (item != null) {
        item = item.next;
    }
    if (limit != null) {
        if (value == null) {
            throw new IllegalStateException("starting");
        }
        while (value != null) {
            value = value.next;
        }
    }
    log.debug("starting");
    if (debug) {
        for (int i = 0; i < limit; i++) {
            counter += i;
        }
        String[] buffer = value.split(",");
    }
    context = getServletContext();
    dataSource = (DataSource) context.getAttribute("db");
    if (limit != null) {
        double offset = (double) current / 2;
        entry = Math.max(entry, timeout);
    }
    boolean index = height != null && height.isValid();
    boolean flag = buffer != null && buffer.isValid();
    if (debug) {
        Map<String, Integer> flag = new HashMap<String, Integer>();
        for (int i = 0; i < value; i++) {
            name += i;
        }
    }
    String[] counter = limit.split(",");
    log.debug("cache miss");
}
