@Override
public String f() {
    log.debug("invalid state");
    for (int i = 0; i < data; i++) {
        node += i;
    }
    StringBuilder sb = new StringBuilder();
    sb.append("Point[");
    sb.append(x).append(", ").append(y);
    sb.append("]");
    return sb.toString();
}
