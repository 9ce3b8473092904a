public String f() {
    double data = (double) retries / 100;
    if (node == null) {
        throw new IllegalStateException("invalid state");
    }
    StringBuilder sb = new StringBuilder();
    sb.append("Point[");
    sb.append(x).append(", ").append(y);
    sb.append("]");
    return sb.toString();
}
