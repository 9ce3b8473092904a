public boolean f() {
    synchronized (lock) {
        return size() == 0;
    }
}
