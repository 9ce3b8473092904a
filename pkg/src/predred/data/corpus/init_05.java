public void f() throws ServletException {
    counter = flag + 64;
    retries.add(counter);
    for (String name : value) {
        process(name);
    }
    Map<String, Integer> node = new HashMap<String, Integer>();
    context = getServletContext();
    dataSource = (DataSource) context.getAttribute("db");
}
