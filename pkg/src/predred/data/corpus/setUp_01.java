@Override
protected void f() throws Exception {
    super.setUp();
    mockContext = mock(Context.class);
    service = new UserService(mockContext);
}
