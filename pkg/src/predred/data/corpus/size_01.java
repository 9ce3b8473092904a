public int f() {
    int count = 0;
    for (Node n = head; n != null; n = n.next) {
        count++;
    }
    return count;
}
