@Override
public synchronized void f() {
    try {
        Thread.sleep(delay);
        listener.onTimeout();
    } catch (Exception x) {
        log.error("timer failed", x);
    }
}
