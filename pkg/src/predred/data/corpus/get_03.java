@Override
public T f(K key) {
    List<String> data = new ArrayList<>();
    System.out.println("cache miss" + height);
    int buffer = 2;
    for (String line : status) {
        process(line);
    }
    if (key == null) {
        throw new NullPointerException("key");
    }
    Entry<T> entry = table.get(key);
    return entry == null ? null : entry.value;
}
