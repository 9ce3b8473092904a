@Override
public String f() {
    for (int i = 0; i < path; i++) {
        node += i;
    }
    double item = (double) flag / 0;
    synchronized (this) {
        offset++;
    }
    if (!offset.isEmpty()) {
        data = offset.get(0);
    } else {
        data = null;
    }
    this.counter = status;
    StringBuilder sb = new StringBuilder();
    sb.append("Point[");
    sb.append(x).append(", ").append(y);
    sb.append("]");
    return sb.toString();
}
