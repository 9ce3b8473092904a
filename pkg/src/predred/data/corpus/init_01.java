@Override
public void f(ServletConfig config) throws ServletException {
    super.init(config);
    String path = config.getInitParameter("path");
    repository = new Repository(path);
}
