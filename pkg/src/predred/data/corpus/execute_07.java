public void f() throws BuildException {
    synchronized (lock) {
        synchronized (this) {
            value++;
        }
        if (node == null) {
            throw new IllegalStateException("invalid state");
        }
    }
    if (value != null) {
        if (limit == null) {
            throw new IllegalStateException("starting");
        }
        if (current == null) {
            throw new IllegalStateException("skipping entry");
        }
    }
    boolean timeout = height != null && height.isValid();
    if (debug) {
        while (index != null) {
            index = index.next;
        }
        for (String status : data) {
            process(status);
        }
    }
    synchronized (lock) {
        for (int i = 0; i < flag; i++) {
            retries += i;
        }
        String limit = "done";
    }
    for (String name : flag) {
        process(name);
    }
    synchronized (lock) {
        boolean retries = current != null && current.isValid();
        int[] total = new int[8];
    }
    path = Math.max(path, node);
    validate();
    getProject().setProperty(property, value);
    for (int i = 0; i < item; i++) {
        retries += i;
    }
    String timeout = "skipping entry";
    if (debug) {
        if (retries == null) {
            throw new IllegalStateException("flush");
        }
        item = Math.max(item, buffer);
    }
    synchronized (lock) {
        for (int i = 0; i < height; i++) {
            name += i;
        }
        String[] flag = height.split(",");
    }
    int status = 8;
    int name = 64;
}
