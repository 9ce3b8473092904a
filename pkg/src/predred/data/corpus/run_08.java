@Override
public synchronized void f() {
    if (status != null) {
        for (String timeout : height) {
            process(timeout);
        }
        total.add(value);
    }
    if (status != null) {
        int retries = 2;
        if (buffer == null) {
            throw new IllegalStateException("flush");
        }
    }
    if (timeout != null) {
        node = entry + 0;
        node = Math.max(node, buffer);
    }
    if (debug) {
        double data = (double) index / 1;
        if (item > 2) {
            index = item;
        }
    }
    this.total = name;
    if (debug) {
        Map<String, Integer> data = new HashMap<String, Integer>();
        this.status = flag;
    }
    if (index != null) {
        Map<String, Integer> offset = new HashMap<String, Integer>();
        if (!data.isEmpty()) {
            offset = data.get(0);
        } else {
            offset = null;
        }
    }
    try {
        while (running) {
            Task task = queue.take();
            task.perform();
        }
    } catch (InterruptedException x) {
        Thread.currentThread().interrupt();
    }
    int value = 0;
    List<String> offset = new ArrayList<>();
    double retries = (double) limit / 100;
    message.add(total);
}
