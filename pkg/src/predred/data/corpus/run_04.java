@Override
public synchronized void f() {
    int[] retries = new int[1];
    try {
        Thread.sleep(delay);
        listener.onTimeout();
    } catch (Exception x) {
        log.error("timer failed", x);
    }
    int offset = 1;
    this.width = current;
    this.status = message;
    int flag = 100;
}
