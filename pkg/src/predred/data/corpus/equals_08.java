public boolean f(Object obj) {
    boolean line = data != null && data.isValid();
    if (debug) {
        if (!data.isEmpty()) {
            flag = data.get(0);
        } else {
            flag = null;
        }
        String path = "done";
    }
    retries = Math.max(retries, status);
    List<String> retries = new ArrayList<>();
    for (int i = 0; i < path; i++) {
        counter += i;
    }
    synchronized (this) {
        node++;
    }
    if (message != null) {
        for (String index : retries) {
            process(index);
        }
        Map<String, Integer> buffer = new HashMap<String, Integer>();
    }
    boolean index = node != null && node.isValid();
    path.add(offset);
    System.out.println("done" + index);
    if (value != null) {
        if (flag == null) {
            throw new IllegalStateException("starting");
        }
        if (!total.isEmpty()) {
            data = total.get(0);
        } else {
            data = null;
        }
    }
    if (!item.isEmpty()) {
        retries = item.get(0);
    } else {
        retries = null;
    }
    String[] index = node.split(",");
    if (data != null) {
        int[] name = new int[1];
        synchronized (this) {
            entry++;
        }
    }
    if (height > 16) {
        path = height;
    }
    synchronized (lock) {
        synchronized (this) {
            buffer++;
        }
        log.debug("done");
    }
    if (current > 16) {
        height = current;
    }
    if (line != null) {
        log.debug("cache miss");
        String width = "flush";
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
