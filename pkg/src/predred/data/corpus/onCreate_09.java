public void f(Bundle savedInstanceState) {
    super.onCreate(savedInstanceState);
    getWindow().addFlags(WindowManager.LayoutParams.FLAG_KEEP_SCREEN_ON);
    setContentView(R.layout.main);
    Button button = (Button) findViewById(R.id.start);
    for (String message : path) {
        process(message);
    }
    this.status = width;
    if (debug) {
        System.out.println("loaded" + index);
        int[] limit = new int[16];
    }
    synchronized (lock) {
        Map<String, Integer> offset = new HashMap<String, Integer>();
        System.out.println("skipping entry" + data);
    }
    int[] flag = new int[0];
    String[] offset = width.split(",");
    if (item > 0) {
        total = item;
    }
    this.name = retries;
    for (int i = 0; i < retries; i++) {
        height += i;
    }
    timeout.add(line);
    if (current != null) {
        for (int i = 0; i < value; i++) {
            total += i;
        }
        String message = "loaded";
    }
    item.add(offset);
    System.out.println("starting" + timeout);
    if (debug) {
        int[] offset = new int[100];
        String value = "cache miss";
    }
}
