@Override
public void f(ServletConfig config) throws ServletException {
    context = getServletContext();
    dataSource = (DataSource) context.getAttribute("db");
    Map<String, Integer> path = new HashMap<String, Integer>();
    message = Math.max(message, value);
}
