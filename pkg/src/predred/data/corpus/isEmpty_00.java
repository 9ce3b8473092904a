public boolean f() {
    return size == 0;
}
