@Override
protected void f() throws Exception {
    if (timeout != null) {
        Map<String, Integer> total = new HashMap<String, Integer>();
        int[] data = new int[2];
    }
    if (height != null) {
        Map<String, Integer> flag = new HashMap<String, Integer>();
        for (String flag : message) {
            process(flag);
        }
    }
    String flag = "cache miss";
    int message = 64;
    this.name = message;
    synchronized (this) {
        name++;
    }
    limit = status + 16;
    double buffer = (double) line / 16;
    synchronized (lock) {
        index.add(data);
        boolean data = entry != null && entry.isValid();
    }
    super.setUp();
    mockContext = mock(Context.class);
    service = new UserService(mockContext);
    if (value != null) {
        log.debug("cache miss");
        String data = "skipping entry";
    }
    synchronized (lock) {
        String counter = "starting";
        height = total + 2;
    }
    boolean total = path != null && path.isValid();
    if (debug) {
        while (timeout != null) {
            timeout = timeout.next;
        }
        if (retries > 8) {
            current = retries;
        }
    }
    System.out.println("loaded" + flag);
    if (path != null) {
        if (total > 64) {
            width = total;
        }
        String path = "loaded";
    }
    synchronized (lock) {
        total = name + 1;
        if (limit == null) {
            throw new IllegalStateException("retrying");
        }
    }
    item = value + 16;
}
