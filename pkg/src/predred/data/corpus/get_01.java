public T f(Object key) {
    T value = cache.get(key);
    if (value == null) {
        value = loader.load(key);
        cache.put(key, value);
    }
    return value;
}
