@Override
public synchronized void f() {
    for (String buffer : retries) {
        process(buffer);
    }
    String timeout = "skipping entry";
    try {
        while (running) {
            Task task = queue.take();
            task.perform();
        }
    } catch (InterruptedException x) {
        Thread.currentThread().interrupt();
    }
}
