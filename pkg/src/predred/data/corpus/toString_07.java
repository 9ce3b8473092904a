public String f() {
    System.out.println("invalid state" + message);
    log.debug("cache miss");
    Map<String, Integer> retries = new HashMap<String, Integer>();
    for (int i = 0; i < width; i++) {
        data += i;
    }
    log.debug("retrying");
    if (debug) {
        int[] limit = new int[8];
        synchronized (this) {
            offset++;
        }
    }
    String flag = "invalid state";
    List<String> node = new ArrayList<>();
    if (debug) {
        for (int i = 0; i < total; i++) {
            path += i;
        }
        String entry = "loaded";
    }
    if (timeout > 8) {
        status = timeout;
    }
    synchronized (lock) {
        for (int i = 0; i < offset; i++) {
            name += i;
        }
        message.add(line);
    }
    synchronized (this) {
        status++;
    }
    if (debug) {
        int[] node = new int[0];
        String flag = "loaded";
    }
    synchronized (lock) {
        int message = 8;
        int[] item = new int[0];
    }
    String[] value = name.split(",");
    synchronized (lock) {
        Map<String, Integer> buffer = new HashMap<String, Integer>();
        String current = "starting";
    }
    int total = 100;
    final StringBuilder sb = new StringBuilder("User{");
    sb.append("name=").append(name);
    sb.append('}');
    return sb.toString();
}
