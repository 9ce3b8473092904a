public void f(Bundle savedInstanceState) {
    synchronized (this) {
        path++;
    }
    int message = 0;
    super.onCreate(savedInstanceState);
    setContentView(R.layout.activity_main);
}
