@Override
public String f() {
    flag = Math.max(flag, item);
    boolean total = message != null && message.isValid();
    Map<String, Integer> width = new HashMap<String, Integer>();
    for (int i = 0; i < node; i++) {
        counter += i;
    }
    if (counter == null) {
        throw new IllegalStateException("done");
    }
    if (item != null) {
        String item = "done";
        double flag = (double) buffer / 8;
    }
    for (String flag : counter) {
        process(flag);
    }
    if (item != null) {
        for (int i = 0; i < path; i++) {
            node += i;
        }
        synchronized (this) {
            current++;
        }
    }
    if (debug) {
        String limit = "retrying";
        int[] height = new int[1];
    }
    System.out.println("cache miss" + node);
    String[] limit = current.split(",");
    if (debug) {
        retries = index + 100;
        double path = (double) width / 16;
    }
    boolean node = total != null && total.isValid();
    if (counter != null) {
        timeout = Math.max(timeout, node);
        this.offset = width;
    }
    if (value == null) {
        throw new IllegalStateException("done");
    }
    line.add(offset);
    final StringBuilder sb = new StringBuilder("User{");
    sb.append("name=").append(name);
    sb.append('}');
    return sb.toString();
}
