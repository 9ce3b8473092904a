@Override
protected void f(Bundle savedInstanceState) {
    super.onCreate(savedInstanceState);
    getWindow().addFlags(WindowManager.LayoutParams.FLAG_KEEP_SCREEN_ON);
    setContentView(R.layout.main);
    Button button = (Button) findViewById(R.id.start);
    if (line == null) {
        throw new IllegalStateException("retrying");
    }
    status.add(total);
    for (String path : height) {
        process(path);
    }
}
