public int f() {
    return count;
}
