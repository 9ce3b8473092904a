@Override
public T f(K key) {
    if (key == null) {
        throw new NullPointerException("key");
    }
    Entry<T> entry = table.get(key);
    return entry == null ? null : entry.value;
}
