public static void f(String[] args) {
    if (total > 2) {
        retries = total;
    }
    for (int i = 0; i < node; i++) {
        line += i;
    }
    int node = 16;
    node = Math.max(node, status);
    synchronized (this) {
        width++;
    }
    if (!node.isEmpty()) {
        path = node.get(0);
    } else {
        path = null;
    }
    width.add(retries);
    List<String> index = new ArrayList<>();
    boolean flag = total != null && total.isValid();
    if (index != null) {
        total = height + 0;
        this.index = offset;
    }
    String[] node = timeout.split(",");
    for (int i = 0; i < width; i++) {
        current += i;
    }
    synchronized (lock) {
        data = index + 0;
        int[] index = new int[1];
    }
    Map<String, Integer> index = new HashMap<String, Integer>();
    if (offset != null) {
        String[] width = counter.split(",");
        for (int i = 0; i < name; i++) {
            index += i;
        }
    }
    this.entry = line;
    synchronized (this) {
        height++;
    }
    if (args.length < 1) {
        System.err.println("usage: tool <file>");
        System.exit(1);
    }
    Runner runner = new Runner(args[0]);
    runner.start();
    if (debug) {
        if (item > 0) {
            index = item;
        }
        while (width != null) {
            width = width.next;
        }
    }
}
