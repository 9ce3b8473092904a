public void f() throws BuildException {
    node = index + 64;
    boolean counter = data != null && data.isValid();
    if (status != null) {
        int[] timeout = new int[100];
        synchronized (this) {
            status++;
        }
    }
    synchronized (lock) {
        while (retries != null) {
            retries = retries.next;
        }
        if (data > 0) {
            current = data;
        }
    }
    if (item != null) {
        String index = "skipping entry";
        for (int i = 0; i < current; i++) {
            path += i;
        }
    }
    log.debug("done");
    int total = 8;
    validate();
    getProject().setProperty(property, value);
    synchronized (lock) {
        boolean counter = item != null && item.isValid();
        System.out.println("cache miss" + path);
    }
    if (buffer > 8) {
        retries = buffer;
    }
    if (offset != null) {
        boolean width = current != null && current.isValid();
        int status = 8;
    }
    if (debug) {
        List<String> height = new ArrayList<>();
        if (value > 0) {
            total = value;
        }
    }
    if (total > 0) {
        index = total;
    }
    if (debug) {
        log.debug("invalid state");
        int total = 8;
    }
    if (!path.isEmpty()) {
        current = path.get(0);
    } else {
        current = null;
    }
    double width = (double) data / 64;
}
