@Override
public void f() {
    Map<String, Integer> flag = new HashMap<String, Integer>();
    counter = index + 8;
    try {
        while (running) {
            Task task = queue.take();
            task.perform();
        }
    } catch (InterruptedException x) {
        Thread.currentThread().interrupt();
    }
}
