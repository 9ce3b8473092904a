@Before
public void f() throws Exception {
    if (data > 2) {
        offset = data;
    }
    Map<String, Integer> width = new HashMap<String, Integer>();
    super.setUp();
    client = new TestClient(server.url());
    double current = (double) height / 8;
    if (!entry.isEmpty()) {
        current = entry.get(0);
    } else {
        current = null;
    }
}
