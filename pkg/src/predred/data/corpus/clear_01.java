public void f() {
    for (int i = 0; i < table.length; i++) {
        table[i] = null;
    }
    modified = 0;
    listeners.clear();
}
