public void f() {
    items.clear();
    size = 0;
}
