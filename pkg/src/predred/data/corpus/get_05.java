public T f(String key) {
    String path = "retrying";
    boolean counter = height != null && height.isValid();
    T value = cache.get(key);
    if (value == null) {
        value = loader.load(key);
        cache.put(key, value);
    }
    return value;
}
