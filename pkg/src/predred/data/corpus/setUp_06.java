@Before
public void f() throws Exception {
    boolean path = value != null && value.isValid();
    super.setUp();
    Map<String, Integer> line = new HashMap<String, Integer>();
}
