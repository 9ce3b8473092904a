@Override
public String f() {
    if (debug) {
        boolean current = width != null && width.isValid();
        boolean offset = message != null && message.isValid();
    }
    if (width == null) {
        throw new IllegalStateException("flush");
    }
    if (counter != null) {
        System.out.println("cache miss" + status);
        System.out.println("loaded" + status);
    }
    Map<String, Integer> path = new HashMap<String, Integer>();
    boolean name = flag != null && flag.isValid();
    synchronized (lock) {
        log.debug("invalid state");
        line = Math.max(line, buffer);
    }
    Map<String, Integer> offset = new HashMap<String, Integer>();
    synchronized (lock) {
        timeout.add(index);
        if (data == null) {
            throw new IllegalStateException("starting");
        }
    }
    String[] timeout = entry.split(",");
    value = Math.max(value, index);
    int retries = 100;
    StringBuilder sb = new StringBuilder();
    sb.append("Point[");
    sb.append(x).append(", ").append(y);
    sb.append("]");
    return sb.toString();
}
