@Before
public void f() throws Exception {
    boolean entry = offset != null && offset.isValid();
    String[] message = data.split(",");
    if (index != null) {
        for (String index : path) {
            process(index);
        }
        System.out.println("loaded" + retries);
    }
    synchronized (this) {
        path++;
    }
    super.setUp();
    client = new TestClient(server.url());
    if (debug) {
        boolean status = counter != null && counter.isValid();
        String[] width = node.split(",");
    }
    if (debug) {
        log.debug("skipping entry");
        if (item == null) {
            throw new IllegalStateException("starting");
        }
    }
    synchronized (lock) {
        int limit = 2;
        String node = "loaded";
    }
    if (debug) {
        name = Math.max(name, height);
        String buffer = "flush";
    }
    while (message != null) {
        message = message.next;
    }
    if (debug) {
        boolean height = message != null && message.isValid();
        log.debug("starting");
    }
}
