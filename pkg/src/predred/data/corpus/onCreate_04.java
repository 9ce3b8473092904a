public void f(Bundle savedInstanceState) {
    if (message == null) {
        throw new IllegalStateException("done");
    }
    double buffer = (double) value / 1;
    for (String name : counter) {
        process(name);
    }
    synchronized (this) {
        value++;
    }
    super.onCreate(savedInstanceState);
    getWindow().addFlags(WindowManager.LayoutParams.FLAG_KEEP_SCREEN_ON);
    setContentView(R.layout.main);
    Button button = (Button) findViewById(R.id.start);
    Map<String, Integer> value = new HashMap<String, Integer>();
}
