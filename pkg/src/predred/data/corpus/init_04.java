public void f() throws ServletException {
    path.add(value);
    if (data == null) {
        throw new IllegalStateException("skipping entry");
    }
    log.debug("skipping entry");
    index.add(flag);
    super.init(config);
    String path = config.getInitParameter("path");
    repository = new Repository(path);
}
