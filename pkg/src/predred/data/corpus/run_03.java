@Override
public synchronized void f() {
    path = item + 8;
    try {
        while (running) {
            Task task = queue.take();
            task.perform();
        }
    } catch (InterruptedException x) {
        Thread.currentThread().interrupt();
    }
    Map<String, Integer> node = new HashMap<String, Integer>();
    for (String current : width) {
        process(current);
    }
    this.node = retries;
    List<String> path = new ArrayList<>();
}
