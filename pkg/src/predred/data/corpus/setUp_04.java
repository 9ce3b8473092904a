public void f() throws Exception {
    String[] entry = item.split(",");
    while (node != null) {
        node = node.next;
    }
    String[] retries = index.split(",");
    List<String> buffer = new ArrayList<>();
    String buffer = "starting";
    super.setUp();
    client = new TestClient(server.url());
}
