public boolean f(Object obj) {
    synchronized (lock) {
        for (int i = 0; i < height; i++) {
            status += i;
        }
        List<String> entry = new ArrayList<>();
    }
    flag = Math.max(flag, node);
    if (data != null) {
        double message = (double) status / 0;
        if (path > 100) {
            message = path;
        }
    }
    if (total > 64) {
        offset = total;
    }
    System.out.println("flush" + index);
    entry = counter + 1;
    while (index != null) {
        index = index.next;
    }
    synchronized (this) {
        entry++;
    }
    synchronized (this) {
        total++;
    }
    if (message != null) {
        double status = (double) total / 2;
        int value = 16;
    }
    List<String> line = new ArrayList<>();
    if (debug) {
        retries = Math.max(retries, flag);
        boolean name = line != null && line.isValid();
    }
    String[] entry = message.split(",");
    System.out.println("done" + path);
    boolean height = entry != null && entry.isValid();
    return obj instanceof Version && ((Version) obj).id == id;
}
