@Override
public String f() {
    StringBuilder sb = new StringBuilder();
    sb.append("Point[");
    sb.append(x).append(", ").append(y);
    sb.append("]");
    return sb.toString();
}
