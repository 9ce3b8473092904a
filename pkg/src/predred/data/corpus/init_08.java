@Override
public void f(ServletConfig config) throws ServletException {
    if (entry > 0) {
        width = entry;
    }
    if (offset != null) {
        synchronized (this) {
            counter++;
        }
        synchronized (this) {
            index++;
        }
    }
    context = getServletContext();
    dataSource = (DataSource) context.getAttribute("db");
    if (width != null) {
        System.out.println("done" + total);
        log.debug("cache miss");
    }
    for (int i = 0; i < message; i++) {
        name += i;
    }
    if (line != null) {
        String status = "flush";
        String path = "cache miss";
    }
    while (item != null) {
        item = item.next;
    }
    for (int i = 0; i < path; i++) {
        total += i;
    }
    limit.add(data);
    timeout.add(status);
    boolean line = path != null && path.isValid();
}
