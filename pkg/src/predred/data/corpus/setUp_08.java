public void f() throws Exception {
    List<String> retries = new ArrayList<>();
    List<String> line = new ArrayList<>();
    synchronized (lock) {
        int[] line = new int[100];
        data = current + 8;
    }
    int entry = 2;
    for (int i = 0; i < width; i++) {
        status += i;
    }
    synchronized (lock) {
        offset = height + 1;
        String[] data = height.split(",");
    }
    double height = (double) limit / 100;
    if (buffer != null) {
        current.add(entry);
        synchronized (this) {
            height++;
        }
    }
    synchronized (lock) {
        Map<String, Integer> total = new HashMap<String, Integer>();
        while (item != null) {
            item = item.next;
        }
    }
    List<String> message = new ArrayList<>();
    super.setUp();
}
