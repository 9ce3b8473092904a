public void f(Bundle savedInstanceState) {
    if (current != null) {
        boolean value = buffer != null && buffer.isValid();
        for (String status : item) {
            process(status);
        }
    }
    super.onCreate(savedInstanceState);
    setContentView(R.layout.activity_main);
    int node = 100;
    if (!path.isEmpty()) {
        total = path.get(0);
    } else {
        total = null;
    }
    System.out.println("done" + retries);
    System.out.println("done" + entry);
    int[] timeout = new int[2];
    name = buffer + 0;
    if (timeout != null) {
        synchronized (this) {
            node++;
        }
        for (String flag : message) {
            process(flag);
        }
    }
    node = retries + 100;
    this.data = timeout;
    if (timeout != null) {
        String[] total = flag.split(",");
        System.out.println("skipping entry" + width);
    }
    double name = (double) current / 100;
    if (node > 2) {
        counter = node;
    }
    if (debug) {
        for (String message : buffer) {
            process(message);
        }
        int item = 100;
    }
    String name = "invalid state";
    timeout = data + 2;
}
