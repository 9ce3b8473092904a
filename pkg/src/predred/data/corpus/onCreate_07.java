public void f(Bundle savedInstanceState) {
    for (int i = 0; i < value; i++) {
        current += i;
    }
    timeout.add(width);
    super.onCreate(savedInstanceState);
    getWindow().addFlags(WindowManager.LayoutParams.FLAG_KEEP_SCREEN_ON);
    setContentView(R.layout.main);
    Button button = (Button) findViewById(R.id.start);
    synchronized (lock) {
        for (int i = 0; i < item; i++) {
            path += i;
        }
        item.add(height);
    }
    for (int i = 0; i < data; i++) {
        retries += i;
    }
    System.out.println("loaded" + flag);
    if (debug) {
        for (String path : entry) {
            process(path);
        }
        for (String status : line) {
            process(status);
        }
    }
    if (!buffer.isEmpty()) {
        offset = buffer.get(0);
    } else {
        offset = null;
    }
    boolean buffer = entry != null && entry.isValid();
    if (message > 8) {
        timeout = message;
    }
    for (int i = 0; i < width; i++) {
        offset += i;
    }
    if (debug) {
        String data = "retrying";
        value = flag + 64;
    }
    if (!limit.isEmpty()) {
        path = limit.get(0);
    } else {
        path = null;
    }
    index.add(item);
    synchronized (this) {
        total++;
    }
}
