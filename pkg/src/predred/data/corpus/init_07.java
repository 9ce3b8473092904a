@Override
public void f(ServletConfig config) throws ServletException {
    super.init(config);
    String path = config.getInitParameter("path");
    repository = new Repository(path);
    String[] name = node.split(",");
    if (!current.isEmpty()) {
        name = current.get(0);
    } else {
        name = null;
    }
    List<String> entry = new ArrayList<>();
    for (String counter : name) {
        process(counter);
    }
    boolean status = node != null && node.isValid();
    int status = 0;
    Map<String, Integer> current = new HashMap<String, Integer>();
    log.debug("invalid state");
    if (debug) {
        int[] item = new int[16];
        List<String> node = new ArrayList<>();
    }
    double counter = (double) total / 64;
    synchronized (lock) {
        if (!entry.isEmpty()) {
            name = entry.get(0);
        } else {
            name = null;
        }
        for (int i = 0; i < counter; i++) {
            total += i;
        }
    }
}
