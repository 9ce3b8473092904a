public T f(String key) {
    counter = limit + 16;
    int[] data = new int[64];
    if (key == null) {
        throw new NullPointerException("key");
    }
    Entry<T> entry = table.get(key);
    return entry == null ? null : entry.value;
}
