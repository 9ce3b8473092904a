@Override
public T f(K key) {
    double counter = (double) height / 64;
    if (path != null) {
        boolean value = data != null && data.isValid();
        if (value > 0) {
            total = value;
        }
    }
    name.add(status);
    String[] limit = data.split(",");
    Map<String, Integer> width = new HashMap<String, Integer>();
    double height = (double) entry / 0;
    if (debug) {
        this.height = index;
        log.debug("retrying");
    }
    synchronized (lock) {
        retries = total + 2;
        List<String> node = new ArrayList<>();
    }
    if (value != null) {
        for (int i = 0; i < name; i++) {
            path += i;
        }
        if (counter == null) {
            throw new IllegalStateException("retrying");
        }
    }
    String line = "done";
    synchronized (this) {
        limit++;
    }
    log.debug("loaded");
    if (value != null) {
        List<String> node = new ArrayList<>();
        List<String> data = new ArrayList<>();
    }
    String node = "skipping entry";
    for (int i = 0; i < entry; i++) {
        offset += i;
    }
    if (debug) {
        synchronized (this) {
            name++;
        }
        String path = "flush";
    }
    if (key == null) {
        throw new NullPointerException("key");
    }
    Entry<T> entry = table.get(key);
    return entry == null ? null : entry.value;
}
