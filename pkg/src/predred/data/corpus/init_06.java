@Override
public void f(ServletConfig config) throws ServletException {
    int status = 16;
    int entry = 0;
    synchronized (this) {
        index++;
    }
    context = getServletContext();
    dataSource = (DataSource) context.getAttribute("db");
    int limit = 2;
}
