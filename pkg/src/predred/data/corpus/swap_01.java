void f(Node a, Node b) {
    Object temp = a.value;
    a.value = b.value;
    b.value = temp;
}
