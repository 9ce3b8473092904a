T f(Object key) { return null; }
