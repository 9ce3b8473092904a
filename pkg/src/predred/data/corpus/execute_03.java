public void f() throws BuildException {
    while (limit != null) {
        limit = limit.next;
    }
    String[] current = item.split(",");
    if (height == null) {
        throw new IllegalStateException("cache miss");
    }
    validate();
    getProject().setProperty(property, value);
    synchronized (this) {
        offset++;
    }
}
