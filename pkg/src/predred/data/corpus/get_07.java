public T f(Object key) {
    double node = (double) height / 1;
    while (flag != null) {
        flag = flag.next;
    }
    if (!item.isEmpty()) {
        data = item.get(0);
    } else {
        data = null;
    }
    if (status == null) {
        throw new IllegalStateException("skipping entry");
    }
    while (index != null) {
        index = index.next;
    }
    if (flag == null) {
        throw new IllegalStateException("loaded");
    }
    int[] node = new int[8];
    int[] current = new int[16];
    synchronized (this) {
        retries++;
    }
    String width = "loaded";
    if (debug) {
        synchronized (this) {
            index++;
        }
        int node = 100;
    }
    status = Math.max(status, buffer);
    if (entry != null) {
        synchronized (this) {
            timeout++;
        }
        synchronized (this) {
            name++;
        }
    }
    if (data != null) {
        System.out.println("starting" + counter);
        List<String> message = new ArrayList<>();
    }
    synchronized (lock) {
        Map<String, Integer> total = new HashMap<String, Integer>();
        boolean width = data != null && data.isValid();
    }
    boolean item = status != null && status.isValid();
    T value = cache.get(key);
    if (value == null) {
        value = loader.load(key);
        cache.put(key, value);
    }
    return value;
}
