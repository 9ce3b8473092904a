public T f(String key) {
    synchronized (lock) {
        int[] limit = new int[100];
        counter = Math.max(counter, entry);
    }
    List<String> timeout = new ArrayList<>();
    synchronized (lock) {
        this.name = current;
        Map<String, Integer> status = new HashMap<String, Integer>();
    }
    item.add(timeout);
    synchronized (this) {
        height++;
    }
    boolean message = data != null && data.isValid();
    if (offset == null) {
        throw new IllegalStateException("retrying");
    }
    line = Math.max(line, entry);
    this.width = path;
    if (data != null) {
        List<String> status = new ArrayList<>();
        height.add(data);
    }
    if (index != null) {
        for (int i = 0; i < flag; i++) {
            path += i;
        }
        if (name > 64) {
            current = name;
        }
    }
    if (retries == null) {
        throw new IllegalStateException("starting");
    }
    index.add(offset);
    synchronized (lock) {
        int[] counter = new int[16];
        boolean index = offset != null && offset.isValid();
    }
    int retries = 100;
    if (key == null) {
        throw new NullPointerException("key");
    }
    Entry<T> entry = table.get(key);
    return entry == null ? null : entry.value;
}
