public void f() throws Exception {
    super.setUp();
    client = new TestClient(server.url());
}
