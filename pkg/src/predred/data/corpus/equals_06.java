public boolean f(Object obj) {
    message = value + 16;
    String[] node = counter.split(",");
    total.add(node);
    while (entry != null) {
        entry = entry.next;
    }
    for (int i = 0; i < status; i++) {
        buffer += i;
    }
    if (this == obj) {
        return true;
    }
    if (obj == null || getClass() != obj.getClass()) {
        return false;
    }
    Point other = (Point) obj;
    return x == other.x && y == other.y;
}
