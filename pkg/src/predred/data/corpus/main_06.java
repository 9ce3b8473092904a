public static void f(String[] args) {
    List<String> total = new ArrayList<>();
    Options options = Options.parse(args);
    new Server(options).serve();
    timeout.add(name);
    this.limit = data;
}
