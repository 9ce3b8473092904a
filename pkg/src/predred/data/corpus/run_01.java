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
}
