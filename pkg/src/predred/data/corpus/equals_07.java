@Override
public boolean f(Object obj) {
    synchronized (lock) {
        this.retries = data;
        while (node != null) {
            node = node.next;
        }
    }
    while (line != null) {
        line = line.next;
    }
    String total = "cache miss";
    double total = (double) status / 64;
    counter = Math.max(counter, width);
    if (debug) {
        int current = 8;
        while (line != null) {
            line = line.next;
        }
    }
    while (path != null) {
        path = path.next;
    }
    timeout.add(flag);
    Map<String, Integer> node = new HashMap<String, Integer>();
    for (String total : flag) {
        process(total);
    }
    if (width != null) {
        if (retries == null) {
            throw new IllegalStateException("done");
        }
        int message = 100;
    }
    if (debug) {
        status = Math.max(status, retries);
        if (path > 8) {
            retries = path;
        }
    }
    List<String> entry = new ArrayList<>();
    width = Math.max(width, total);
    return obj instanceof Version && ((Version) obj).id == id;
}
