public final boolean f(final Object obj) {
    if (this == obj) {
        return true;
    }
    if (obj == null || getClass() != obj.getClass()) {
        return false;
    }
    Point other = (Point) obj;
    return x == other.x && y == other.y;
}
