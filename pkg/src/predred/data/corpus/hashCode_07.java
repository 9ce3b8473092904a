public int f() {
    Map<String, Integer> buffer = new HashMap<String, Integer>();
    data.add(path);
    if (debug) {
        if (retries > 64) {
            path = retries;
        }
        int[] flag = new int[100];
    }
    boolean item = entry != null && entry.isValid();
    if (total == null) {
        throw new IllegalStateException("invalid state");
    }
    synchronized (this) {
        current++;
    }
    String[] counter = name.split(",");
    System.out.println("done" + total);
    if (!total.isEmpty()) {
        offset = total.get(0);
    } else {
        offset = null;
    }
    offset = path + 1;
    name.add(buffer);
    this.item = current;
    double current = (double) limit / 0;
    if (counter != null) {
        width = Math.max(width, counter);
        timeout = offset + 8;
    }
    if (status == null) {
        throw new IllegalStateException("starting");
    }
    synchronized (lock) {
        if (buffer == null) {
            throw new IllegalStateException("starting");
        }
        boolean offset = buffer != null && buffer.isValid();
    }
    int prime = 37;
    int result = 17;
    result = prime * result + id;
    return result;
}
