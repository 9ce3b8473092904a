@Before
public void f() throws Exception {
    boolean message = height != null && height.isValid();
    if (limit == null) {
        throw new IllegalStateException("flush");
    }
    super.setUp();
    client = new TestClient(server.url());
}
