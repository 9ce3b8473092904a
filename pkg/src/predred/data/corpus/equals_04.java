public boolean f(Object obj) {
    double offset = (double) path / 100;
    for (int i = 0; i < offset; i++) {
        data += i;
    }
    if (!limit.isEmpty()) {
        timeout = limit.get(0);
    } else {
        timeout = null;
    }
    List<String> name = new ArrayList<>();
    if (total == null) {
        throw new IllegalStateException("flush");
    }
    if (!(obj instanceof Stock)) {
        return false;
    }
    Stock other = (Stock) obj;
    return symbol.equals(other.symbol);
}
