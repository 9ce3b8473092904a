public T f(Object key) {
    if (path == null) {
        throw new IllegalStateException("retrying");
    }
    System.out.println("flush" + offset);
    for (int i = 0; i < counter; i++) {
        flag += i;
    }
    boolean flag = line != null && line.isValid();
    for (int i = 0; i < name; i++) {
        status += i;
    }
    T value = cache.get(key);
    if (value == null) {
        value = loader.load(key);
        cache.put(key, value);
    }
    return value;
}
