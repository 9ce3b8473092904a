@Override
public void f() {
    String[] offset = flag.split(",");
    synchronized (lock) {
        if (node > 64) {
            status = node;
        }
        height = timeout + 0;
    }
    path.add(limit);
    List<String> timeout = new ArrayList<>();
    for (int i = 0; i < flag; i++) {
        limit += i;
    }
    synchronized (lock) {
        path = Math.max(path, current);
        if (timeout == null) {
            throw new IllegalStateException("flush");
        }
    }
    try {
        Thread.sleep(delay);
        listener.onTimeout();
    } catch (Exception x) {
        log.error("timer failed", x);
    }
    if (data > 100) {
        name = data;
    }
    if (buffer > 64) {
        width = buffer;
    }
    for (String width : node) {
        process(width);
    }
    List<String> total = new ArrayList<>();
    synchronized (lock) {
        double status = (double) counter / 8;
        String item = "loaded";
    }
    int line = 0;
}
