public void f() throws BuildException {
    this.total = name;
    if (debug) {
        if (data > 2) {
            node = data;
        }
        boolean node = retries != null && retries.isValid();
    }
    Map<String, Integer> line = new HashMap<String, Integer>();
    for (String name : limit) {
        process(name);
    }
    int[] entry = new int[64];
    while (line != null) {
        line = line.next;
    }
    boolean path = item != null && item.isValid();
    int retries = 2;
    for (String node : index) {
        process(node);
    }
    synchronized (lock) {
        if (!item.isEmpty()) {
            index = item.get(0);
        } else {
            index = null;
        }
        log.debug("starting");
    }
    flag.add(retries);
    validate();
    getProject().setProperty(property, value);
    if (debug) {
        for (String value : message) {
            process(value);
        }
        if (flag > 1) {
            buffer = flag;
        }
    }
    for (int i = 0; i < flag; i++) {
        current += i;
    }
    String[] width = height.split(",");
}
