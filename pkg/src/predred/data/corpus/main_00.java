public static void f(String[] args) {
    System.setProperty(
        Constants.DUBBO_PROPERTIES_KEY,
        "conf/dubbo.properties");
    Main.main(args);
}
