public void f(Bundle savedInstanceState) {
    List<String> flag = new ArrayList<>();
    while (message != null) {
        message = message.next;
    }
    super.onCreate(savedInstanceState);
    setContentView(R.layout.activity_main);
    Map<String, Integer> retries = new HashMap<String, Integer>();
    Map<String, Integer> index = new HashMap<String, Integer>();
}
