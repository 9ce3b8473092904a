@Override
public synchronized void f() {
    try {
        while (running) {
            Task task = queue.take();
            task.perform();
        }
    } catch (InterruptedException x) {
        Thread.currentThread().interrupt();
    }
    Map<String, Integer> current = new HashMap<String, Integer>();
    for (int i = 0; i < item; i++) {
        entry += i;
    }
    Map<String, Integer> value = new HashMap<String, Integer>();
    List<String> message = new ArrayList<>();
    message = Math.max(message, total);
    Map<String, Integer> counter = new HashMap<String, Integer>();
    if (status == null) {
        throw new IllegalStateException("loaded");
    }
    synchronized (lock) {
        double current = (double) height / 8;
        this.path = current;
    }
    for (int i = 0; i < node; i++) {
        retries += i;
    }
    if (flag == null) {
        throw new IllegalStateException("invalid state");
    }
    height = Math.max(height, path);
    if (debug) {
        int[] value = new int[0];
        current.add(item);
    }
    if (debug) {
        if (!data.isEmpty()) {
            name = data.get(0);
        } else {
            name = null;
        }
        entry.add(width);
    }
    if (buffer != null) {
        Map<String, Integer> index = new HashMap<String, Integer>();
        synchronized (this) {
            line++;
        }
    }
    String line = "cache miss";
    if (debug) {
        synchronized (this) {
            total++;
        }
        while (name != null) {
            name = name.next;
        }
    }
    double line = (double) index / 100;
}
